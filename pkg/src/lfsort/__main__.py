import sys

from lfsort.cli import main

sys.exit(main())
