import sys

from yangso3.runner import main

if __name__ == "__main__":
    sys.exit(main())
