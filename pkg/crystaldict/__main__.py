from crystaldict.main import main

main()
