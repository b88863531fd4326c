# Modulo Workspace - registro persistente de objetos con nombre
from .registry import Workspace, validate_object, kind_of
