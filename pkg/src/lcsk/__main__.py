import sys

from lcsk.cli import main

sys.exit(main())
