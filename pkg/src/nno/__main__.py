from nno.cli import main
import sys

sys.exit(main())
