from twopage.cli.main import main

raise SystemExit(main())
