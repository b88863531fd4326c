# Modulo Reports - reportes de suite (texto, JSON, Excel) y exportacion DOT
from .suite_report import suite_text, suite_detail, suite_json, guardar_reporte
from .dot_export import to_dot, export_dot, u_cut_graph
from .excel_generator import ExcelGenerator
