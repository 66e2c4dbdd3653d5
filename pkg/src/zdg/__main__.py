from zdg.cli import main

raise SystemExit(main())
