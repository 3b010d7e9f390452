import sys

from atbplanes.cli import main

sys.exit(main())
