#!/usr/bin/env python3
"""Writes data/emotion/lexicon.tsv, the hand-annotated miniature lexicon.

Rows follow the NRC-EmoLex word-level layout (word, emotion, flag) with all
ten affect categories listed for every word.
"""
import os

EMOTIONS = ["anger", "anticipation", "disgust", "fear", "joy", "sadness",
            "surprise", "trust", "positive", "negative"]

# word: space-separated flagged categories
ENTRIES = {
    # English
    "happy": "joy positive", "joy": "joy positive", "love": "joy positive",
    "smiling": "joy positive", "smile": "joy positive", "laugh": "joy surprise positive",
    "celebrate": "anticipation joy surprise trust positive", "celebration": "anticipation joy surprise trust positive",
    "party": "anticipation joy positive", "sun": "anticipation joy surprise trust positive",
    "summer": "anticipation joy positive", "friend": "joy trust positive", "friends": "joy trust positive",
    "hope": "anticipation joy surprise trust positive", "dream": "anticipation joy positive",
    "win": "anticipation joy surprise trust positive", "victory": "anticipation joy surprise trust positive",
    "beautiful": "joy positive", "wonderful": "joy surprise trust positive", "peace": "anticipation joy trust positive",
    "music": "joy sadness surprise positive", "dance": "joy trust positive", "free": "joy trust positive",
    "gift": "anticipation joy surprise trust positive", "kiss": "anticipation joy surprise positive",
    "home": "anticipation joy trust positive", "together": "trust positive", "welcome": "joy surprise trust positive",
    "reassure": "trust positive", "calm": "trust positive", "safe": "joy trust positive", "trust": "trust positive",
    "honest": "trust positive", "truth": "trust positive", "faith": "anticipation joy trust positive",
    "tomorrow": "anticipation", "soon": "anticipation", "wait": "anticipation", "future": "anticipation",
    "coming": "anticipation", "ready": "anticipation", "plan": "anticipation",
    "surprise": "fear joy surprise", "sudden": "fear surprise", "unexpected": "surprise", "suddenly": "surprise",
    "amazing": "joy surprise positive", "wow": "surprise",
    "worry": "anticipation fear sadness negative", "afraid": "fear negative", "fear": "anger fear negative",
    "danger": "fear negative", "dark": "fear sadness", "storm": "anger fear negative", "alone": "sadness negative",
    "lonely": "anger disgust fear sadness negative", "sad": "sadness negative", "cry": "sadness negative",
    "tears": "sadness negative", "loss": "anger fear sadness negative", "lost": "fear sadness negative",
    "death": "anger anticipation disgust fear sadness surprise negative", "die": "fear sadness negative",
    "goodbye": "sadness", "rain": "anticipation joy sadness trust", "cold": "negative", "broken": "anger fear sadness negative",
    "angry": "anger disgust negative", "hate": "anger disgust fear sadness negative", "rage": "anger negative",
    "fight": "anger fear negative", "war": "anger fear negative", "shout": "anger surprise",
    "disgusting": "anger disgust fear negative", "dirty": "disgust negative", "rotten": "disgust negative",
    "sick": "disgust negative", "waste": "disgust negative", "liar": "anger disgust negative",
    "ugly": "disgust negative", "poison": "anger disgust fear sadness negative",
    "good": "anticipation joy surprise trust positive", "bad": "anger disgust fear sadness negative",
    "great": "positive", "best": "positive", "nice": "positive", "kind": "joy trust positive",
    "help": "positive", "thank": "joy trust positive", "thanks": "joy trust positive", "coffee": "",
    "city": "", "street": "", "today": "", "people": "", "world": "", "time": "anticipation",
    "morning": "", "night": "", "open": "", "visit": "", "book": "", "read": "", "write": "",
    "sea": "positive", "river": "", "tree": "anger anticipation disgust joy trust positive",
    "school": "trust", "work": "", "market": "trust", "exhibition": "", "concert": "anticipation joy positive",
    "festival": "anticipation joy surprise positive", "cinema": "", "museum": "",
    # Portuguese
    "feliz": "joy positive", "alegria": "anticipation joy positive", "amor": "joy positive", "sorriso": "joy positive",
    "festa": "anticipation joy surprise positive", "sol": "anticipation joy surprise trust positive",
    "verão": "anticipation joy positive", "amigo": "joy trust positive", "amigos": "joy trust positive",
    "esperança": "anticipation joy surprise trust positive", "sonho": "anticipation joy positive",
    "vitória": "anticipation joy surprise trust positive", "bonito": "joy positive", "lindo": "joy positive",
    "paz": "anticipation joy trust positive", "música": "joy sadness surprise positive", "dançar": "joy trust positive",
    "casa": "trust positive", "juntos": "trust positive", "calma": "trust positive", "seguro": "joy trust positive",
    "confiança": "trust positive", "verdade": "trust positive", "amanhã": "anticipation", "breve": "anticipation",
    "esperar": "anticipation", "futuro": "anticipation", "surpresa": "fear joy surprise",
    "incrível": "joy surprise positive", "medo": "anger fear negative", "perigo": "fear negative",
    "escuro": "fear sadness", "tempestade": "anger fear negative", "sozinho": "sadness negative",
    "triste": "sadness negative", "tristeza": "sadness negative", "chorar": "sadness negative",
    "lágrimas": "sadness negative", "perda": "anger fear sadness negative", "morte": "anger anticipation disgust fear sadness surprise negative",
    "saudade": "sadness", "chuva": "anticipation joy sadness trust", "frio": "negative",
    "raiva": "anger negative", "ódio": "anger disgust fear sadness negative", "guerra": "anger fear negative",
    "lutar": "anger fear negative", "nojo": "anger disgust negative", "sujo": "disgust negative",
    "podre": "disgust negative", "doente": "disgust negative", "mentiroso": "anger disgust negative",
    "bom": "anticipation joy surprise trust positive", "mau": "anger disgust fear sadness negative",
    "obrigado": "joy trust positive", "ajuda": "positive", "cidade": "", "rua": "", "hoje": "", "mundo": "",
    "manhã": "", "noite": "", "livro": "", "mar": "positive", "escola": "trust", "mercado": "trust",
    "concerto": "anticipation joy positive", "museu": "", "preocupar": "anticipation fear sadness negative",
    "tranquilizar": "trust positive", "odiar": "anger disgust fear sadness negative", "amar": "joy positive",
    # French
    "heureux": "joy positive", "heureuse": "joy positive", "joie": "joy positive", "amour": "joy positive",
    "sourire": "joy positive", "fête": "anticipation joy surprise positive", "soleil": "anticipation joy surprise trust positive",
    "été": "anticipation joy positive", "ami": "joy trust positive", "amis": "joy trust positive",
    "espoir": "anticipation joy surprise trust positive", "rêve": "anticipation joy positive",
    "victoire": "anticipation joy surprise trust positive", "beau": "joy positive", "belle": "joy positive",
    "paix": "anticipation joy trust positive", "musique": "joy sadness surprise positive", "danser": "joy trust positive",
    "maison": "trust positive", "ensemble": "trust positive", "calme": "trust positive", "sûr": "joy trust positive",
    "confiance": "trust positive", "vérité": "trust positive", "demain": "anticipation", "bientôt": "anticipation",
    "attendre": "anticipation", "avenir": "anticipation", "incroyable": "joy surprise positive",
    "peur": "anger fear negative", "sombre": "fear sadness", "tempête": "anger fear negative",
    "seul": "sadness negative", "tristesse": "sadness negative", "pleurer": "sadness negative",
    "larmes": "sadness negative", "perte": "anger fear sadness negative", "mort": "anger anticipation disgust fear sadness surprise negative",
    "pluie": "anticipation joy sadness trust", "froid": "negative", "colère": "anger negative",
    "haine": "anger disgust fear sadness negative", "guerre": "anger fear negative", "combattre": "anger fear negative",
    "dégoût": "anger disgust negative", "sale": "disgust negative", "pourri": "disgust negative",
    "malade": "disgust negative", "menteur": "anger disgust negative", "bon": "anticipation joy surprise trust positive",
    "mauvais": "anger disgust fear sadness negative", "merci": "joy trust positive", "aide": "positive",
    "ville": "", "rue": "", "aujourd'hui": "", "monde": "", "matin": "", "nuit": "", "livre": "",
    "mer": "positive", "école": "trust", "marché": "trust", "musée": "", "inquiéter": "anticipation fear sadness negative",
    "rassurer": "trust positive", "détester": "anger disgust fear sadness negative", "aimer": "joy positive",
    "malheureux": "sadness negative", "infeliz": "sadness negative", "unhappy": "anger disgust sadness negative",
}


def main():
    out = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data", "emotion", "lexicon.tsv")
    with open(out, "w", encoding="utf-8") as fh:
        fh.write("# word\temotion\tflag (miniature hand-annotated lexicon; NRC-EmoLex layout)\n")
        for word in sorted(ENTRIES):
            flags = set(ENTRIES[word].split())
            unknown = flags - set(EMOTIONS)
            assert not unknown, (word, unknown)
            for emotion in EMOTIONS:
                fh.write(f"{word}\t{emotion}\t{1 if emotion in flags else 0}\n")


if __name__ == "__main__":
    main()
