"""Exhaustive tests"""
