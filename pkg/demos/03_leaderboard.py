"""Rank a set of challenge submissions and render the leaderboard.

Run:  python demos/03_leaderboard.py
"""

from capvqa import rank_leaderboard, render_leaderboard

# (team, S2) pairs as they might come off a results dashboard, unsorted.
submissions = [
    ("Tyche", 52.1481),
    ("CHTTLIOT", 60.0393),
    ("GenAI4E_BunBo", 52.4267),
    ("Rutgers ECE MM", 57.4658),
    ("MIZSU", 45.7572),
    ("SCU_Anastasiu", 59.1184),
    ("AIO_GENAI4E", 55.6550),
    ("ARV", 57.9138),
    ("Metropolis_Video_Intelligence", 58.8483),
    ("VNPT_AI", 57.1133),
]

ranked = rank_leaderboard(submissions)
print(render_leaderboard(ranked, "markdown"))

# Ties sort lexicographically by team name but keep distinct ranks.
print(render_leaderboard(rank_leaderboard([("zeta", 50.0), ("alpha", 50.0)]), "csv"))
