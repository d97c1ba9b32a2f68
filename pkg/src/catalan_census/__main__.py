import sys

from catalan_census.cli import main

sys.exit(main())
