"""Golden tables shipped with the package"""
