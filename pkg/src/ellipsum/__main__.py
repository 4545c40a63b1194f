from ellipsum.cli import main

main()
