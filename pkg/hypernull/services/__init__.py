from .cache import ReportCache
from .statistic_registry import StatisticSpec, resolve_statistic
from .null_test_service import NullTestService, null_test
from .profile_service import ProfileService, profile_null
from .batch_report_service import (
    BatchReportService,
    batch_report,
    DEFAULT_NULLS,
)
from .run_manifest_service import RunManifestService
