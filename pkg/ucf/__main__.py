import sys

from ucf.cli import main


sys.exit(main())
