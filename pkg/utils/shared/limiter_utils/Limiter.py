import asyncio
from typing import Any, Callable, Iterable


from tqdm import asyncio as tqdmasyncio


from config.config import THREADS
from logger.logger import Logger
logger = Logger(logger_name=__name__)


class Limiter:
    """
    Run blocking jobs concurrently, at most `semaphore` at a time.
    Results come back in input order, so reductions over them are deterministic.

    Example:
    >>> limiter = Limiter(semaphore=4, progress_bar=False)
    >>> limiter.run(func=lambda interval: scan_interval(*interval), inputs=intervals)
    """
    def __init__(self,
                 semaphore: int=THREADS,
                 progress_bar: bool=False,
                ):
        self.size = max(1, int(semaphore))
        self.progress_bar = progress_bar

    async def __aenter__(self):
        return self

    async def __aexit__(self, exc_type, exc_val, exc_tb):
        pass

    async def run_task_with_limit(self, semaphore: asyncio.Semaphore, func: Callable, inp: Any, *args, **kwargs) -> Any:
        async with semaphore:
            return await asyncio.to_thread(func, inp, *args, **kwargs)

    async def run_async_many(self,
                             *args,
                             inputs: Iterable[Any]=None,
                             func: Callable=None,
                             **kwargs
                            ) -> list[Any]:
        if inputs is None:
            raise ValueError("inputs was not input as a parameter")

        if func is None:
            raise ValueError("func was not input as a parameter")

        # NOTE The semaphore has to be created inside the running event loop.
        semaphore = asyncio.Semaphore(self.size)
        task_list = [
            self.run_task_with_limit(semaphore, func, inp, *args, **kwargs) for inp in inputs
        ]
        logger.debug(f"Running {len(task_list)} jobs of '{getattr(func, '__name__', func)}' on {self.size} threads")

        if self.progress_bar:
            return await tqdmasyncio.tqdm.gather(*task_list)
        else:
            return await asyncio.gather(*task_list)

    def run(self, *args, inputs: Iterable[Any]=None, func: Callable=None, **kwargs) -> list[Any]:
        """Blocking entry point for synchronous callers."""
        return asyncio.run(self.run_async_many(*args, inputs=list(inputs) if inputs is not None else None, func=func, **kwargs))
