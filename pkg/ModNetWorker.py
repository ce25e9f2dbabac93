############################################################
# modnet: modularity tests for weighted signed networks    #
# MIT Licence                                              #
############################################################

import logging
import os
from multiprocessing.pool import ThreadPool

log = logging.getLogger('modnet.lib')


class Worker(object):
    """
    Carries out Monte Carlo replicates, either in order in the
    calling thread or spread over a pool of threads.

    Results always come back in task order, so whatever is
    reduced from them does not depend on the thread count.
    """

    def __init__(self, app=None, threads=1, name=None):
        self.app = app
        self.name = name

        if threads is None or int(threads) <= 0:
            threads = os.cpu_count() or 1
        self.threads = int(threads)

    @property
    def log(self):
        if self.app is not None:
            return self.app.log
        return log

    def map(self, fcn, tasks, chunksize=None):
        """
        Applies ``fcn`` to every task.

        :param fcn: Function of one argument.
        :param tasks: Iterable of arguments.
        :param chunksize: Tasks handed to a thread at a time.
        :return: List of results, in task order.
        """

        tasks = list(tasks)
        self.log.debug("Worker %s: %d tasks on %d thread(s)" %
                       (self.name, len(tasks), self.threads))

        if self.threads == 1 or len(tasks) < 2:
            return [self.do_worker_task(fcn, task) for task in tasks]

        if chunksize is None:
            chunksize = max(1, len(tasks) // (4 * self.threads))

        pool = ThreadPool(processes=self.threads)
        try:
            return pool.map(lambda task: self.do_worker_task(fcn, task), tasks, chunksize)
        finally:
            pool.close()
            pool.join()

    def do_worker_task(self, fcn, task):
        try:
            return fcn(task)
        except Exception as e:
            self.log.error("Worker %s: task %s failed: %s" % (self.name, str(task), str(e)))
            raise
