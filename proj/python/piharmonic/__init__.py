try:
    from ._piharmonic import *  # noqa: F401,F403
except ImportError:  # development layout: extension built outside the package
    from _piharmonic import *  # noqa: F401,F403
