# Makes 'utils' a sub-package
