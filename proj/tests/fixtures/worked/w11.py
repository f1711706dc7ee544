def greet(name, times):
    parts = []
    for i in range(times):
        parts.append(f"{name}!")
    return " ".join(parts)
