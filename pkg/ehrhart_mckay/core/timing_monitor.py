from ehrhart_mckay.utils.logger import log


class TimingMonitor:
    def __init__(self):
        self.total_seconds = 0.0
        self.total_calls = 0
        self.usage_log = [] # List of (method, algebra, seconds)

    def record_usage(self, method: str, algebra: str, seconds: float):
        log("TimingMonitor", f"{method} on {algebra}: {seconds:.3f}s", level="DEBUG")
        self.total_seconds += seconds
        self.total_calls += 1
        self.usage_log.append((method, algebra, seconds))

    def get_report(self) -> dict:
        per_method: dict[str, float] = {}
        for method, _, seconds in self.usage_log:
            per_method[method] = per_method.get(method, 0.0) + seconds
        return {
            "total_seconds": round(self.total_seconds, 6),
            "total_calls": self.total_calls,
            "per_method": {name: round(seconds, 6) for name, seconds in per_method.items()},
        }
