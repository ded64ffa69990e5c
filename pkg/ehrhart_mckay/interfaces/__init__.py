# Makes 'interfaces' a sub-package
