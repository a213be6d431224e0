# -*- coding: utf-8 -*-


"""darbouxverifier.__main__: executed when darbouxverifier directory is called as script."""


from .darbouxverifier import main

main()
