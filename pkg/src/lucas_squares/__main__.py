from lucas_squares.cli import main

main()
