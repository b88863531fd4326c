# Pruebas del banco de trabajo
