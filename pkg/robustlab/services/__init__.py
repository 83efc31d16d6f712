"""Cross-cutting services: instrumentation and worker pools"""
