############################################################
# modnet: modularity tests for weighted signed networks    #
# MIT Licence                                              #
############################################################

#################################################
#  modnet - Version settings                    #
#################################################

import logging

version = {
    "number": 1.0,
    "date": (2026, 10, 1),  # Year, Month, Day
    "name": None,
    "release": False,
}

# --verbose 0/1/2
verbosity_levels = {
    0: logging.WARNING,
    1: logging.INFO,
    2: logging.DEBUG
}


def setup(app):
    app.version = version["number"]
    app.version_date = version["date"]
    if version["release"]:
        app.log.setLevel(logging.WARNING)
    else:
        app.log.setLevel(logging.DEBUG)

    if version["name"] is None and version["release"] == False:
        app.version_name = "Development Version"
    else:
        app.version_name = version["name"]


def set_verbosity(app, level):
    """
    Overrides the logging level chosen by setup().

    :param app: App instance.
    :param level: 0, 1 or 2. Larger values are clamped.
    :return: None
    """

    level = max(0, min(int(level), 2))
    app.log.setLevel(verbosity_levels[level])
