int dummy_strategies;
