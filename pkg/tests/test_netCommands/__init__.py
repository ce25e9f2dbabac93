# allowed command tests (please append them alphabetically ordered)
from .test_NetCommandAnalyze import *
from .test_NetCommandCompare import *
from .test_NetCommandCorrelate import *
from .test_NetCommandPower import *
from .test_NetCommandQuantiles import *
from .test_NetCommandSetSys import *
from .test_NetCommandSimulate import *
from .test_NetCommandTest import *
from .test_NetCommandTw1 import *
from .test_NetCommandVersion import *
