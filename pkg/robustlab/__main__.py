from robustlab.cli.main import main

raise SystemExit(main())
