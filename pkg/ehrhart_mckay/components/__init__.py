# Makes 'components' a sub-package
