#!/usr/bin/env python3
"""Generates the synthetic fixtures under data/fixtures.

The corpora are small, fully synthetic and deterministic (fixed seed). They
exist so the cascade can be trained and evaluated end to end in seconds:

  spam.jsonl    500 SMS-style messages labeled spam / ham
  intent.jsonl  200 workplace messages over five intents, with user ids and
                per-user habits so the contextual agent has history to use

Re-running the script reproduces the committed files byte for byte.
"""

import json
import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "data" / "fixtures"

# ---------------------------------------------------------------------------
# Spam / ham

SPAM_TEMPLATES = [
    "WINNER! You have been selected to receive a {prize}. Call {phone} now to claim",
    "Congratulations! Your mobile number won a {prize}. Text CLAIM to {short} to collect",
    "URGENT: your account has a pending {prize} reward. Reply YES to {short} before midnight",
    "FREE entry into our weekly draw for a {prize}. Txt WIN to {short} now. T&Cs apply",
    "You are guaranteed a {prize} or cash award! Call {phone} from a landline. Offer ends today",
    "Cheap {product} now available, lowest price guaranteed. Order at {url}",
    "Get {product} without prescription, discreet delivery. Visit {url} today",
    "Claim your free {product} voucher worth {amount} pounds. Reply STOP to opt out. {url}",
    "Limited offer: {amount} pounds cash bonus when you text BONUS to {short}",
    "Your {product} subscription is free for 3 months! Just call {phone} to activate",
    "Hot singles in your area want to chat. Text DATE to {short}, only {amount}p per msg",
    "PRIVATE! Your {prize} claim code is waiting. Call {phone} identifier code {code}",
]

HAM_TEMPLATES = [
    "Ok lar, see you at {place} {time}",
    "Are you coming to {place} {time}? I'll save you a seat",
    "Sorry I'm running late, be there in {minutes} mins",
    "Can you pick up {item} on the way home",
    "Thanks for {event} yesterday, had a great time",
    "Did you finish the {task}? Let me know if you need help",
    "I'm at {place} now, where are you",
    "Happy birthday! Hope you have a lovely day, see you {time}",
    "Mum says dinner is at {clock}, don't forget the {item}",
    "Just got home, really tired. Talk {time}?",
    "Meeting moved to {clock}, same room as before",
    "Can't talk now, call you after {event}",
    "Lol that was so funny, {friend} is hilarious",
    "Don't forget we have {event} {time}",
    "Hey {friend}, want to grab lunch at {place} {time}",
    "I left my {item} at your place, can I come get it {time}",
]

SPAM_SLOTS = {
    "prize": ["1000 pounds prize", "holiday to Spain", "brand new phone", "2000 cash prize", "luxury cruise",
              "shopping voucher"],
    "phone": ["09061701461", "08712300220", "09050000327", "08000930705"],
    "short": ["87121", "80086", "85023", "69669", "81010"],
    "product": ["pills", "ringtones", "watches", "loans", "meds"],
    "url": ["www.win-now.biz", "www.cheap-deals.co", "www.free-prize.net"],
    "amount": ["500", "250", "150", "100"],
    "code": ["X29", "K52", "B77"],
}

HAM_SLOTS = {
    "place": ["the cafe", "the library", "work", "the station", "Tom's", "the gym", "the pub"],
    "time": ["tonight", "tomorrow", "later", "on Saturday", "this evening", "after class"],
    "minutes": ["5", "10", "15", "20"],
    "item": ["milk", "bread", "my keys", "the charger", "some snacks", "the tickets"],
    "event": ["the party", "dinner", "the match", "the movie", "class", "the meeting"],
    "task": ["assignment", "report", "essay", "slides", "shopping"],
    "clock": ["7", "half six", "8pm", "noon"],
    "friend": ["Tom", "Sara", "Jay", "Mike", "Anna"],
}

SPAM_RULES = [
    ("spam-01", r"\b(claim|collect)\b.*\b(prize|reward|voucher|code)\b", "spam", 0.9),
    ("spam-02", r"\bcall 0[0-9]{9,}", "spam", 0.9),
    ("spam-03", r"\btxt|\btext [A-Z]+ to [0-9]{5}", "spam", 0.85),
    ("spam-04", r"www\.[a-z-]+\.(biz|net|co)", "spam", 0.85),
    ("spam-05", r"\b(winner|congratulations|urgent)\b", "spam", 0.8),
    ("spam-06", r"\bT&Cs\b|opt out|\bSTOP\b", "spam", 0.8),
    ("spam-07", r"\bfree (entry|[a-z]+ voucher)\b", "spam", 0.8),
    ("ham-01", r"^(ok|lol|hey|sorry|thanks|just)\b", "ham", 0.75),
    ("ham-02", r"\bsee you\b|\bcall you\b|\btalk (tonight|tomorrow|later)\b", "ham", 0.7),
    ("ham-03", r"\b(mum|dinner|lunch|home)\b", "ham", 0.7),
]


def fill(template, slots, rng):
    out = template
    for key, values in slots.items():
        token = "{" + key + "}"
        while token in out:
            out = out.replace(token, rng.choice(values), 1)
    return out


def spam_corpus(rng):
    labels = ["ham"] * 400 + ["spam"] * 100
    rng.shuffle(labels)
    docs = []
    for i, label in enumerate(labels, start=1):
        if label == "spam":
            text = fill(rng.choice(SPAM_TEMPLATES), SPAM_SLOTS, rng)
        else:
            text = fill(rng.choice(HAM_TEMPLATES), HAM_SLOTS, rng)
        docs.append({"id": f"sms-{i:03d}", "text": text, "label": label})
    return docs


# ---------------------------------------------------------------------------
# Intents

IR, AD, EC, FP, GI = ("Information Request", "Action Directive", "Expression of Concern",
                      "Feedback Provision", "General Inquiry")
INTENTS = [IR, AD, EC, FP, GI]

TOPICS = ["order process", "budget report", "shipment schedule", "vendor contract", "onboarding plan",
          "travel policy", "quarterly review", "server migration", "invoice system", "training program"]

# A message is a sentence frame, which carries the intent, followed by a
# clause. Most clauses are worded like the frame's intent; in the remaining
# "hard" messages the clause is worded like a different intent, so a
# bag-of-words model sees conflicting evidence.
FRAMES = {
    IR: ["Could you explain the {t}",
         "Can you tell me more about the {t}",
         "I need more information about the {t}",
         "Where can I find details on the {t}",
         "Please clarify how the {t} works"],
    AD: ["Please finalize the {t}",
         "Make sure the {t} gets done",
         "Submit the {t} to the director",
         "Assign an owner for the {t}",
         "Update the {t}"],
    EC: ["I am worried about the {t}",
         "I'm concerned the {t} is slipping",
         "The {t} worries me",
         "I fear the {t} has a problem",
         "Something seems wrong with the {t}"],
    FP: ["Great job on the {t}",
         "I really liked the {t}",
         "My feedback on the {t} is positive",
         "The {t} turned out well",
         "Thanks for the {t}"],
    GI: ["Does anyone know who owns the {t}",
         "Just wondering about the {t}",
         "Is there a meeting on the {t}",
         "Quick question about the {t}",
         "Has anybody seen the {t}"],
}

CLAUSES = {
    IR: ["and where the documentation is kept",
         "with the full specifications",
         "since I could not find the overview",
         "including the reference details"],
    AD: ["so we can submit it today",
         "before the deadline on Friday",
         "and send the update to finance",
         "since it must be completed this week"],
    EC: ["because the risk keeps growing",
         "since the delays are a serious problem",
         "as it seems to be falling behind",
         "given the troubling issues so far"],
    FP: ["which was excellent work",
         "the new version looks great",
         "it was really helpful",
         "nice improvement over last time"],
    GI: ["just out of curiosity",
         "if anyone happens to know",
         "no rush, only wondering",
         "whenever someone is around"],
}

HARD_RATE = 0.3

# Regex rules for the logic agent. Frame rules read sentence structure and
# are trusted more; clause rules are a weaker fallback.
INTENT_RULES = [
    (IR, 0.85, r"^could you explain\b"),
    (IR, 0.85, r"^can you tell me\b"),
    (IR, 0.85, r"\bneed more information\b"),
    (IR, 0.85, r"^where can i find\b"),
    (IR, 0.85, r"^please clarify\b"),
    (IR, 0.80, r"more information.*\border\b"),
    (AD, 0.85, r"^please finalize\b"),
    (AD, 0.85, r"^make sure\b"),
    (AD, 0.85, r"^submit\b"),
    (AD, 0.85, r"^assign\b"),
    (AD, 0.85, r"^update\b"),
    (EC, 0.85, r"^i am worried\b"),
    (EC, 0.85, r"^i'm concerned\b"),
    (EC, 0.85, r"\bworries me\b"),
    (EC, 0.85, r"^i fear\b"),
    (EC, 0.85, r"^something seems wrong\b"),
    (FP, 0.85, r"^great job\b"),
    (FP, 0.85, r"^i really liked\b"),
    (FP, 0.85, r"^my feedback\b"),
    (FP, 0.85, r"\bturned out well\b"),
    (FP, 0.85, r"^thanks for\b"),
    (GI, 0.85, r"^does anyone know\b"),
    (GI, 0.85, r"^just wondering\b"),
    (GI, 0.85, r"^is there a meeting\b"),
    (GI, 0.85, r"^quick question\b"),
    (GI, 0.85, r"^has anybody seen\b"),
    (IR, 0.60, r"\bdocumentation\b"),
    (IR, 0.60, r"\bspecifications\b"),
    (IR, 0.60, r"\boverview\b"),
    (IR, 0.60, r"\breference details\b"),
    (AD, 0.60, r"\bsubmit it today\b"),
    (AD, 0.60, r"\bdeadline\b"),
    (AD, 0.60, r"\bsend the update\b"),
    (AD, 0.60, r"\bmust be completed\b"),
    (EC, 0.60, r"\brisk\b"),
    (EC, 0.60, r"\bdelays?\b"),
    (EC, 0.60, r"\bfalling behind\b"),
    (EC, 0.60, r"\btroubling\b"),
    (FP, 0.60, r"\bexcellent\b"),
    (FP, 0.60, r"\blooks great\b"),
    (FP, 0.60, r"\breally helpful\b"),
    (FP, 0.60, r"\bnice improvement\b"),
    (GI, 0.60, r"\bcuriosity\b"),
    (GI, 0.60, r"\bhappens to know\b"),
    (GI, 0.60, r"\bonly wondering\b"),
    (GI, 0.60, r"\bsomeone is around\b"),
    (IR, 0.55, r"\bhow\b.*\bworks\b"),
    (AD, 0.55, r"\b(today|this week)\b"),
    (EC, 0.55, r"\bproblem\b"),
    (GI, 0.55, r"\banyone\b"),
]

USERS = [f"u{i:02d}" for i in range(1, 11)]
HABIT = {user: INTENTS[i % 5] for i, user in enumerate(USERS)}


def intent_corpus(rng):
    # 40 documents per intent; every user mostly writes with one intent.
    pool = {intent: 40 for intent in INTENTS}
    docs = []
    while sum(pool.values()):
        user = rng.choice(USERS)
        intent = HABIT[user] if rng.random() < 0.8 else rng.choice(INTENTS)
        if pool[intent] == 0:
            continue
        pool[intent] -= 1
        clause_intent = intent
        if rng.random() < HARD_RATE:
            clause_intent = rng.choice([i for i in INTENTS if i != intent])
        frame = rng.choice(FRAMES[intent]).replace("{t}", rng.choice(TOPICS))
        text = f"{frame} {rng.choice(CLAUSES[clause_intent])}"
        docs.append({"id": f"msg-{len(docs) + 1:03d}", "text": text, "label": intent, "user_id": user})
    return docs


def rules_json(rules):
    return {"rules": [{"id": rid, "pattern": pattern, "label": label, "confidence": conf}
                      for rid, pattern, label, conf in rules]}


def intent_rules():
    counters = {}
    short = {IR: "ir", AD: "ad", EC: "ec", FP: "fp", GI: "gi"}
    rules = []
    for label, conf, pattern in INTENT_RULES:
        counters[label] = counters.get(label, 0) + 1
        rules.append((f"{short[label]}-{counters[label]:02d}", pattern, label, conf))
    return rules


def write_jsonl(path, docs):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for d in docs:
            f.write(json.dumps(d, ensure_ascii=False) + "\n")


def write_json(path, obj):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    write_jsonl(OUT / "spam.jsonl", spam_corpus(random.Random(5574)))
    write_jsonl(OUT / "intent.jsonl", intent_corpus(random.Random(10000)))
    write_json(OUT / "spam_rules.json", rules_json(SPAM_RULES))
    rules = intent_rules()
    assert len(rules) == 50, len(rules)
    write_json(OUT / "intent_rules.json", rules_json(rules))


if __name__ == "__main__":
    main()
