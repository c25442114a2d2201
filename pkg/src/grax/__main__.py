import sys

from grax.cli import main

sys.exit(main())
