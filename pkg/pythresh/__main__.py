import sys

from pythresh.cli import main

sys.exit(main())
