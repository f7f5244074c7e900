"""Walk through the dissimilarity functions, bottom up.

Run: python3 demos/01_distances.py
"""

from covmin.dataset import Action, ParamValue, preprocess_output
from covmin.distance import (
    action_distance,
    bag_distance,
    levenshtein,
    normalize,
    param_distance,
    url_distance,
)

# Page texts are tokenized, stripped of markup and stopwords, and stemmed
# before any distance is taken.
doc1 = preprocess_output("<h1>Job created</h1> The build is running")
doc2 = preprocess_output("<h1>Job deleted</h1> The build has stopped")
print("tokens 1:", doc1.tokens)
print("tokens 2:", doc2.tokens)
print("word Levenshtein:", levenshtein(doc1.tokens, doc2.tokens))
print("bag lower bound: ", bag_distance(doc1.tokens, doc2.tokens))

# URLs are compared as word sequences: everything past the longest common
# prefix counts on both sides.
u1 = ("http", "hostname", "login")
u2 = ("http", "hostname", "job", "try1", "lastBuild")
print("\nurl distance:", url_distance(u1, u2), "(1 word vs 3 past the prefix)")

# Parameter lists match positionally by kind; each value distance is
# squashed into [0, 1) before summing, and the sum is squashed again.
p1 = (("count", ParamValue(kind="int", int_value=10)),
      ("name", ParamValue(kind="text", text_value="John")))
p2 = (("count", ParamValue(kind="int", int_value=42)),
      ("name", ParamValue(kind="text", text_value="Johnny")))
print("param distance:", round(param_distance(p1, p2), 4))
print("non-matching lists score exactly:", param_distance(p1, ()))

# The action distance keeps both parts readable: integral part = URL words,
# decimal part = parameter dissimilarity.
a1 = Action(method="GET", url_words=u1, params=p1)
a2 = Action(method="GET", url_words=u2, params=p2)
d = action_distance(a1, a2)
print("\naction distance:", round(d.value, 4),
      "= url", d.url_part, "+ params", round(d.param_part, 4))
print("normalize(32) =", round(normalize(32), 4), "(maps any count into [0, 1))")
