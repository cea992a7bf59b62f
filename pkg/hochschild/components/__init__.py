from .table import TableComponent
from .profile import ProfileComponent
from .report import JsonComponent
