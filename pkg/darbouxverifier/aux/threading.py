import threading
from wrapt import synchronized


class TaskCounter(object):
    def __init__(self, size):
        super().__init__()
        self.__size = size
        self.__next = 0
        self.__failed = False

    @synchronized
    def take(self):
        if self.__failed or self.__next >= self.__size:
            return None
        index = self.__next
        self.__next += 1
        return index

    @synchronized
    def fail(self):
        self.__failed = True


class WorkerThread(object):
    """Pulls indices from a shared counter and stores results in their slot."""

    def __init__(self, func, items, counter, results, errors):
        super().__init__()
        self.__func = func
        self.__items = items
        self.__counter = counter
        self.__results = results
        self.__errors = errors
        self.__thread = threading.Thread(target=lambda: self.run(), daemon=True)

    def start(self):
        self.__thread.start()

    def join(self):
        self.__thread.join()

    def run(self):
        while True:
            index = self.__counter.take()
            if index is None:
                return
            try:
                self.__results[index] = self.__func(self.__items[index])
            except Exception as e:
                self.__errors[index] = e
                self.__counter.fail()
                return


def ordered_map(func, items, workers=1):
    """Like `list(map(func, items))`, spread over `workers` threads.

    Results keep the order of `items`. The exception of the lowest failing
    index is re-raised.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    results = [None] * len(items)
    errors = [None] * len(items)
    counter = TaskCounter(len(items))
    threads = [
        WorkerThread(func, items, counter, results, errors)
        for _ in range(min(workers, len(items)))
    ]
    for thread in threads:
        thread.start()
    for thread in threads:
        thread.join()

    for error in errors:
        if error is not None:
            raise error
    return results
