# bcinverse_engine/__main__.py
import sys

from bcinverse_engine.cli import main

sys.exit(main())
