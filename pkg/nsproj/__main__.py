import sys

from nsproj.cli import main

sys.exit(main())
