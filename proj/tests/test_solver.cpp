int dummy_solver;
