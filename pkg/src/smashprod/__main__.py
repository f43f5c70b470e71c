import sys

from smashprod.cli import main

sys.exit(main())
