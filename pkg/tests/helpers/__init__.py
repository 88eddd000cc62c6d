"""Shared builders for tests"""
