import sys

from magfine.cli import main

sys.exit(main())
