import sys

from treehopf.cli import main

sys.exit(main())
