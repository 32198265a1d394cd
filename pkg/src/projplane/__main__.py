import sys

from .script.cli import main

sys.exit(main())
