from symstrata.cli import main

main()
