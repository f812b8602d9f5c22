from .report_cache import ReportCache
