import sys

from eoent.cli import main

sys.exit(main())
