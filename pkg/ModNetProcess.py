############################################################
# modnet: modularity tests for weighted signed networks    #
# MIT Licence                                              #
############################################################

import time
import weakref


class MNProcess(object):
    """
    One tracked unit of long-running work (a Monte Carlo run,
    a table generation, an analysis). Used as a context manager:

        with app.proc_container.new("Calibration"):
            ...
    """

    app = None

    def __init__(self, descr):
        self.callbacks = {
            "done": []
        }
        self.descr = descr
        self.status = "Active"
        self.started = time.time()
        self.finished = None

    def __enter__(self):
        if self.app is not None:
            self.app.log.info("Started: %s" % self.descr)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if exc_type is not None and self.app is not None:
            self.app.log.error("Abnormal termination of process: %s" % self.descr)
            self.app.log.error(exc_type)
            self.app.log.error(exc_val)
            self.status = "Failed"

        self.done()

    def done(self):
        if self.finished is not None:
            return

        self.finished = time.time()
        if self.status == "Active":
            self.status = "Done"

        for fcn in self.callbacks["done"]:
            fcn(self)

    def connect(self, callback, event="done"):
        if callback not in self.callbacks[event]:
            self.callbacks[event].append(callback)

    def elapsed(self):
        end = self.finished if self.finished is not None else time.time()
        return end - self.started


class MNProcessContainer(object):
    """
    Keeps track of the running processes.

    Only weak references are kept, so a process that is
    dropped by its owner disappears from the container too.
    """

    app = None

    def __init__(self):

        self.procs = []

    def add(self, proc):

        self.procs.append(weakref.ref(proc))

    def new(self, descr):
        proc = MNProcess(descr)
        proc.app = self.app

        proc.connect(self.on_done, event="done")

        self.add(proc)

        self.on_change(proc)

        return proc

    def on_change(self, proc):
        if self.app is not None:
            self.app.log.debug("%d process(es) running." % len(self.procs))

    def on_done(self, proc):
        if self.app is not None:
            self.app.log.info("%s: %s in %.1f s" % (proc.descr, proc.status, proc.elapsed()))
        self.remove(proc)

    def remove(self, proc):

        to_be_removed = []

        for pref in self.procs:
            if pref() == proc or pref() is None:
                to_be_removed.append(pref)

        for pref in to_be_removed:
            self.procs.remove(pref)
