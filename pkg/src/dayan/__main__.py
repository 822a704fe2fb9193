import sys

from dayan.cli import main

sys.exit(main())
