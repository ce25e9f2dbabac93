#!/usr/bin/env python3
############################################################
# modnet: modularity tests for weighted signed networks    #
# MIT Licence                                              #
############################################################

import sys

from ModNetApp import main


if __name__ == '__main__':
    sys.exit(main())
