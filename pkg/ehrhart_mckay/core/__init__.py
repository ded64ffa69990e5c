# Makes 'core' a sub-package
