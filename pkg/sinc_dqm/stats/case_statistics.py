from time import time

import psutil

__all__ = ["CaseStatistics", "CaseStatisticsRecord"]

class CaseStatisticsRecord:
    """Class used for collecting timing and resource figures of a single benchmark case.

    The timestamps are collected relative to the time at which the harness run was started.
    """
    def __init__(self, case_id : str, problem : str, method : str, dx : float, dt : float, run_started_at : float):
        self.case_id = case_id
        self.problem = problem
        self.method = method
        self.dx = dx
        self.dt = dt
        self.run_started_at = run_started_at

        self.case_started_at = None
        self.case_completed_at = None
        self.n_nodes = None
        self.steps_taken = None
        self.status = None
        self.linf = None
        self.rss_mb = None

    def case_started(self):
        self.case_started_at = time() - self.run_started_at

    def case_completed(self, report):
        self.case_completed_at = time() - self.run_started_at
        self.n_nodes = report.grid.n_nodes
        self.steps_taken = report.steps_taken
        self.status = str(report.status)
        self.linf = report.linf
        self.rss_mb = psutil.Process().memory_info().rss / 2**20

    @property
    def wall_time(self):
        if self.case_started_at is None or self.case_completed_at is None:
            return None
        return self.case_completed_at - self.case_started_at

    def csv_header(self):
        return "case_id,problem,method,dx,dt,n_nodes,steps_taken,status,linf,wall_time,case_started_at,case_completed_at,rss_mb\n"

    def to_csv(self):
        linf = "" if self.linf is None else f"{self.linf:.17g}"
        return f"{self.case_id},{self.problem},{self.method},{self.dx:g},{self.dt:g},{self.n_nodes},{self.steps_taken},{self.status},{linf},{self.wall_time},{self.case_started_at},{self.case_completed_at},{self.rss_mb}\n"

class CaseStatistics:
    """Class that collects statistics for the cases executed during one harness run.
    """
    def __init__(self, stats_queue = None):
        self.case_records = []
        self.stats_queue = stats_queue
        self.started_at = time()

    def create_record(self, case_config) -> CaseStatisticsRecord:
        return CaseStatisticsRecord(case_config.case_id,
                                    str(case_config.problem),
                                    str(case_config.method),
                                    case_config.dx,
                                    case_config.dt,
                                    self.started_at)

    def log_record(self, record : CaseStatisticsRecord):
        self.case_records.append(record)

        if self.stats_queue is not None:
            self.stats_queue.put_nowait(record)

    def count_case_statistics(self):
        no_cases = len(self.case_records)
        completed = len([r for r in self.case_records if r.status == "completed"])
        diverged = len([r for r in self.case_records if r.status == "diverged"])
        total_wall_time = sum(r.wall_time for r in self.case_records if r.wall_time is not None)
        return no_cases, completed, diverged, total_wall_time

    def __str__(self):
        no_cases, completed, diverged, total_wall_time = self.count_case_statistics()
        if no_cases == 0:
            return "No cases executed."
        else:
            return f"{no_cases} cases / {completed} completed / {diverged} diverged / {total_wall_time:.2f} s total case time"
