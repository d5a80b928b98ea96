import threading
import time


import pandas as pd
import pytest


from utils.shared.decorators.get_exec_time import get_exec_time
from utils.shared.decorators.try_except import try_except
from utils.shared.limiter_utils.Limiter import Limiter
from utils.shared.next_step import next_step
from utils.shared.save_list_of_dicts_to_csv_via_pandas import save_list_of_dicts_to_csv_via_pandas


def test_csv_append_writes_the_header_once(tmp_path):
    rows = [{"t_bracket_lo": 14.0, "t_bracket_hi": 14.25, "refined_t": 14.134725, "abs_zeta": 1e-9}]
    save_list_of_dicts_to_csv_via_pandas(rows, "zeros.csv", folder=str(tmp_path))
    save_list_of_dicts_to_csv_via_pandas(rows, "zeros.csv", folder=str(tmp_path), mode="a")
    df = pd.read_csv(tmp_path / "zeros.csv")
    assert list(df.columns) == ["t_bracket_lo", "t_bracket_hi", "refined_t", "abs_zeta"]
    assert len(df) == 2


def test_csv_returns_the_frame(tmp_path):
    df = save_list_of_dicts_to_csv_via_pandas([{"a": 1}], "a.csv", folder=str(tmp_path), return_df=True)
    assert df.shape == (1, 1)


def test_csv_rejects_other_inputs(tmp_path):
    with pytest.raises(ValueError):
        save_list_of_dicts_to_csv_via_pandas({"a": 1}, "a.csv", folder=str(tmp_path))
    with pytest.raises(ValueError):
        save_list_of_dicts_to_csv_via_pandas([1, 2], "a.csv", folder=str(tmp_path))


def test_limiter_keeps_input_order():
    def slow_square(x):
        time.sleep(0.01 * (5 - x))
        return x * x
    assert Limiter(semaphore=3).run(func=slow_square, inputs=range(5)) == [0, 1, 4, 9, 16]


def test_limiter_bounds_concurrency():
    lock = threading.Lock()
    running = peak = 0

    def job(_):
        nonlocal running, peak
        with lock:
            running += 1
            peak = max(peak, running)
        time.sleep(0.02)
        with lock:
            running -= 1

    Limiter(semaphore=2).run(func=job, inputs=range(8))
    assert 1 <= peak <= 2


def test_limiter_passes_keyword_arguments():
    assert Limiter(semaphore=1).run(func=lambda x, scale: x * scale, inputs=[1, 2], scale=10) == [10, 20]


def test_limiter_needs_inputs_and_func():
    with pytest.raises(ValueError):
        Limiter().run(func=abs)
    with pytest.raises(ValueError):
        Limiter().run(inputs=[1])


def test_try_except_retries_then_raises():
    calls = []

    @try_except(exception=[KeyError], raise_exception=True, retries=2)
    def flaky():
        calls.append(1)
        raise KeyError("missing")

    with pytest.raises(KeyError):
        flaky()
    assert len(calls) == 3


def test_try_except_swallows_when_asked():
    @try_except(exception=[ZeroDivisionError])
    def divide(a, b):
        return a / b

    assert divide(1, 0) is None
    assert divide(6, 3) == 2


def test_try_except_recovers_on_retry():
    calls = []

    @try_except(exception=[RuntimeError], raise_exception=True, retries=1)
    def second_time_lucky():
        calls.append(1)
        if len(calls) == 1:
            raise RuntimeError("first")
        return "ok"

    assert second_time_lucky() == "ok"


def test_get_exec_time_passes_the_result_through():
    @get_exec_time
    def add(a, b):
        return a + b

    assert add(2, 3) == 5
    assert add.__name__ == "add"


def test_next_step_keeps_stdout_clean(capsys):
    next_step("residues", step=3)
    assert capsys.readouterr().out == ""
