from stirzeta.cli import main

raise SystemExit(main())
