"""Print the classification report for a 267/8/4/21 pass/fail confusion matrix."""

from hybridsdg.metrics import ConfusionMatrix, report

cm = ConfusionMatrix(267, 8, 4, 21)
rep = report(cm)
print(rep.to_text())
print()
print(f"counts: {cm.to_dict()}")
print(f"balanced accuracy = (267/275 + 21/25) / 2 = {rep.balanced_accuracy:.4f}")
