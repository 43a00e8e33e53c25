"""
embedgraph - embedded-graph toolkit
Entry point for running the command line from a checkout
"""

if __name__ == "__main__":
    from app.main import run
    run()
