# Banco de trabajo de dominios valuados en quantales
