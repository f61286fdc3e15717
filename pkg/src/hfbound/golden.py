"""Published reference tables for q = 4, stored verbatim.

The data are kept exactly as printed, including the Upper Bound 1 cell at
d=4, n=5 that is inconsistent with its own formula; the diff engine in
``reports`` decides what matches.
"""

# Table I: {block: {d: [value for n = 1..8]}}, None where the table prints "-".
TABLE1 = {
    "hf_upper_1": {
        1: [4, 12, 36, 108, 324, 972, 2916, 8748],
        2: [None, 12, 36, 108, 324, 972, 2916, 8748],
        3: [None, None, 6, 15, 40, 108, 291, 795],
        4: [None, None, None, 15, 8, 108, 291, 795],
        5: [None, None, None, None, 8, 20, 50, 124],
    },
    "hf_upper_3": {
        1: [4, 12, 36, 108, 324, 972, 2916, 8748],
        2: [None, 12, 36, 108, 324, 972, 2916, 8748],
        3: [None, None, 5, 14, 36, 94, 249, 672],
        4: [None, None, None, 14, 36, 94, 249, 672],
        5: [None, None, None, None, 7, 17, 41, 101],
    },
    "hf_lower_1": {
        1: [4, 12, 36, 108, 324, 972, 2916, 8748],
        2: [None, 3, 6, 12, 30, 75, 195, 515],
        3: [None, None, 2, 4, 7, 15, 33, 74],
    },
    "hf_lower_3": {
        1: [4, 12, 36, 108, 324, 972, 2916, 8748],
        2: [None, 3, 6, 15, 36, 95, 250, 673],
        3: [None, None, 2, 4, 8, 18, 42, 102],
    },
}

# Cells known to disagree with the bound formula: (block, d, n) -> reason.
TABLE1_WHITELIST = {
    ("hf_upper_1", 4, 5): "suspected typo: (4-1)//2 == (3-1)//2, so the d=4 cell must equal the d=3 cell (40)",
}

# Table II: n -> {"min": [|H_r| for r=1..n], "max": [...]}; n = 1, 2 print one shared row.
TABLE2 = {
    1: {"min": [3], "max": [3]},
    2: {"min": [4, 7], "max": [4, 7]},
    3: {"min": [5, 14, 16], "max": [6, 12, 17]},
    4: {"min": [6, 21, 44, 36], "max": [8, 22, 36, 41]},
    5: {"min": [7, 29, 79, 127, 81], "max": [10, 36, 74, 104, 99]},
    6: {"min": [8, 38, 124, 269, 350, 182], "max": [12, 54, 136, 238, 292, 239]},
    7: {"min": [9, 48, 180, 476, 861, 932, 409], "max": [14, 76, 230, 480, 734, 804, 577]},
    8: {
        "min": [10, 59, 248, 761, 1702, 2626, 2422, 919],
        "max": [16, 102, 364, 886, 1608, 2198, 2180, 1393],
    },
    9: {
        "min": [11, 71, 329, 1138, 2977, 5758, 7715, 6179, 2065],
        "max": [18, 132, 546, 1528, 3202, 5180, 6434, 5840, 3363],
    },
    10: {
        "min": [12, 84, 424, 1622, 4806, 10963, 18638, 22002, 15540, 4640],
        "max": [20, 166, 784, 2494, 5932, 11030, 16200, 18494, 15492, 8119],
    },
}

# Tables III and IV: (profile for r = 1..n, member count, members over ACGT).
TABLE3 = [
    ((6, 21, 44, 36), 24, (
        "ACGA CAGC GACG TACT ACTA CATC GATG TAGT AGCA CGAC GCAG TCAT AGTA CGTC "
        "GCTG TCGT ATCA CTAC GTAG TGAT ATGA CTGC GTCG TGCT"
    ).split()),
    ((6, 22, 42, 37), 24, (
        "ACGT CAGT GACT TACG ACTG CATG GATC TAGC AGCT CGAT GCAT TCAG AGTC CGTA "
        "GCTA TCGA ATCG CTAG GTAC TGAC ATGC CTGA GTCA TGCA"
    ).split()),
    ((7, 22, 39, 39), 48, (
        "ACAG CACG GACA TACA ACAT CACT GAGC TAGA ACGC CAGA GAGT TATC ACTC CATA "
        "GATA TATG AGAC CGAG GCAC TCAC AGAT CGCA GCGA TCGC AGCG CGCT GCGT TCTA "
        "AGTG CGTG GCTC TCTG ATAC CTAT GTAT TGAG ATAG CTCA GTCT TGCG ATCT CTCG "
        "GTGA TGTA ATGT CTGT GTGC TGTC"
    ).split()),
    ((8, 22, 36, 41), 12, (
        "ACAC CACA GAGA TATA AGAG CGCG GCGC TCTC ATAT CTCT GTGT TGTG"
    ).split()),
]

TABLE4 = [
    ((7, 29, 79, 127, 81), 24, (
        "ACGAC CAGCA GACGA TACTA ACTAC CATCA GATGA TAGTA AGCAG CGACG GCAGC TCATC "
        "AGTAG CGTCG GCTGC TCGTC ATCAT CTACT GTAGT TGATG ATGAT CTGCT GTCGT TGCTG"
    ).split()),
    ((7, 30, 79, 124, 83), 48, (
        "ACGAT CAGCT GACGT TACGA ACGTC CAGTA GACTA TACTG ACTAG CATCG GATCA TAGCA "
        "ACTGC CATGA GATGC TAGTC AGCAT CGACT GCAGT TCAGC AGCTG CGATG GCATC TCATG "
        "AGTAC CGTAG GCTAC TCGAC AGTCG CGTCA GCTGA TCGTA ATCAG CTACG GTACT TGACG "
        "ATCGT CTAGT GTAGC TGATC ATGAC CTGAT GTCAT TGCAG ATGCT CTGCA GTCGA TGCTA"
    ).split()),
    ((7, 31, 80, 119, 86), 24, (
        "ACGTA CAGTC GACTG TACGT ACTGA CATGC GATCG TAGCT AGCTA CGATC GCATG TCAGT "
        "AGTCA CGTAC GCTAG TCGAT ATCGA CTAGC GTACG TGACT ATGCA CTGAC GTCAG TGCAT"
    ).split()),
    ((8, 31, 79, 117, 88), 48, (
        "ACAGC CACGA GACGC TACTC ACATC CACTA GAGCA TAGTG ACGAG CAGCG GAGTA TATCA "
        "ACTAT CATCT GATGT TATGA AGACG CGACA GCAGA TCATA AGATG CGCAG GCGAC TCGTG "
        "AGCAC CGCTG GCGTC TCTAC AGTAT CGTCT GCTGT TCTGC ATACT CTACA GTAGA TGATA "
        "ATAGT CTCAT GTCGC TGCTC ATCAC CTCGT GTGAT TGTAG ATGAG CTGCG GTGCT TGTCG"
    ).split()),
    ((8, 32, 79, 114, 90), 48, (
        "ACAGT CACGT GACTC TACGC ACATG CACTG GAGCT TAGCG ACGTG CAGTG GAGTC TATCG "
        "ACTGT CATGT GATCT TATGC AGACT CGATA GCATA TCAGA AGATC CGCAT GCGAT TCGAG "
        "AGCTC CGCTA GCGTA TCTAG AGTCT CGTAT GCTAT TCTGA ATACG CTAGA GTACA TGACA "
        "ATAGC CTCAG GTCAC TGCAC ATCGC CTCGA GTGAC TGTAC ATGCG CTGAG GTGCA TGTCA"
    ).split()),
    ((8, 33, 76, 117, 89), 24, (
        "ACGCT CAGAT GACAT TACAG ACTCG CATAG GATAC TAGAC AGCGT CGAGT GCACT TCACG "
        "AGTGC CGTGA GCTCA TCGCA ATCTG CTATG GTATC TGAGC ATGTC CTGTA GTCTA TGCGA"
    ).split()),
    ((8, 33, 77, 115, 90), 24, (
        "ACGCA CAGAC GACAG TACAT ACTCA CATAC GATAG TAGAT AGCGA CGAGC GCACG TCACT "
        "AGTGA CGTGC GCTCG TCGCT ATCTA CTATC GTATG TGAGT ATGTA CTGTC GTCTG TGCGT"
    ).split()),
    ((9, 34, 76, 110, 94), 48, (
        "ACACG CACAG GACAC TACAC ACACT CACAT GAGAC TAGAG ACGCG CAGAG GAGAT TATAC "
        "ACTCT CATAT GATAT TATAG AGAGC CGAGA GCACA TCACA AGAGT CGCGA GCGCA TCGCG "
        "AGCGC CGCGT GCGCT TCTCA AGTGT CGTGT GCTCT TCTCG ATATC CTATA GTATA TGAGA "
        "ATATG CTCTA GTCTC TGCGC ATCTC CTCTG GTGTA TGTGA ATGTG CTGTG GTGTC TGTGC"
    ).split()),
    ((9, 34, 77, 108, 95), 24, (
        "ACAGA CACGC GAGCG TATCT ACATA CACTC GAGTG TATGT AGACA CGCAC GCGAG TCTAT "
        "AGATA CGCTC GCGTG TCTGT ATACA CTCAC GTGAG TGTAT ATAGA CTCGC GTGCG TGTCT"
    ).split()),
    ((10, 36, 74, 104, 99), 12, (
        "ACACA CACAC GAGAG TATAT AGAGA CGCGC GCGCG TCTCT ATATA CTCTC GTGTG TGTGT"
    ).split()),
]
