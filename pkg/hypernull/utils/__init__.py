from .report_utils import ReportUtils
from .digest_utils import DigestUtils
