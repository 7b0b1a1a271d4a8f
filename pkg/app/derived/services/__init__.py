from .derived_service import DerivedModel
from .mesh_service import MeshCategory

__all__ = ['DerivedModel', 'MeshCategory']
