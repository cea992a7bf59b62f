import sys

from hochschild.main import main

sys.exit(main())
