import sys

from edgeal.cli.main import main

sys.exit(main())
