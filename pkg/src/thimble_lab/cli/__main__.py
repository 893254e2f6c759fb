import sys
from thimble_lab.cli.main import main

sys.exit(main())
