from hurwitz.cli import main

main()
