# Modulo Formats - documentos de definicion JSON
from .json_parser import DefinitionParser, load_definition, KINDS
from .serializer import to_document, dumps, save_definition
