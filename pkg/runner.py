#!/usr/bin/env python
# -*- coding: utf-8 -*-


"""Convenience wrapper for running darboux-verifier directly from source tree."""


from darbouxverifier.darbouxverifier import main


if __name__ == "__main__":
    main()
