class BudgetExceededError(RuntimeError):
    """计算量超出配置的预算。"""

    def __init__(self, what: str, required: int, budget: int):
        super().__init__(f"{what} 需要 {required} 个基本项, 超出预算 {budget}")
        self.required = required
        self.budget = budget
