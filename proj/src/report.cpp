namespace contactred {}
