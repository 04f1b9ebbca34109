"""Published 40-digit truncated values, transcribed verbatim as strings."""

# (kind, q, a) -> truncated value
GOLDEN = {
    ("M", 3, 1): "-0.3568904795094431291196495672231858954785",
    ("M", 3, 2): "0.2850543590237525795417430724985484211968",
    ("M", 4, 1): "-0.2867420562261751986539451414394238573642",
    ("M", 4, 3): "0.0482392690738179824093719800481197164157",
    ("M", 5, 1): "-0.2088344499872589831393679436740355309848",
    ("M", 5, 2): "0.3960964763519752181620428282992694487673",
    ("M", 5, 3): "0.1386504040417767598465036287614177642579",
    ("M", 5, 4): "-0.2644152175588502111137516747779558229888",
    ("M", 9, 1): "-0.1623582321428699054929449337179721787641",
    ("M", 9, 2): "0.4073663127461732280783211701614365152217",
    ("M", 9, 4): "-0.1293374149143960665485300101130823600639",
    ("M", 9, 5): "0.0358267016686470538569841873571831423790",
    ("M", 9, 7): "-0.0651948324521771570781746233921313566504",
    ("M", 9, 8): "-0.1581386553910677023935622850200712364040",
    ("M", 15, 1): "-0.1506479789635675321223227319951881293922",
    ("M", 15, 2): "0.3967702079831602519989220502990044120830",
    ("M", 15, 4): "-0.1298987796705018718274645424839556504587",
    ("M", 15, 7): "-0.0006737316311850338368792219997349633156",
    ("M", 15, 8): "-0.1190129400473678821538466338276084167633",
    ("M", 15, 11): "-0.0581864710236914510170452116788474015926",
    ("M", 15, 13): "-0.0756699892441886913329830707443071523119",
    ("M", 15, 14): "-0.1345164378883483392862871322940001725301",
    ("M", 21, 1): "-0.1084483613299595805404935908928381422038",
    ("M", 21, 2): "0.4250487959922326653260015663325925353478",
    ("M", 21, 4): "-0.1122733018685413863141062477981428831803",
    ("M", 21, 5): "0.1038169332452743207625287126777970125078",
    ("M", 21, 8): "-0.0786267812146117135562454190553963721560",
    ("M", 21, 10): "-0.0827607926062097370238031413241567050640",
    ("M", 21, 11): "-0.0174063652116240128169859448210067632915",
    ("M", 21, 13): "-0.0396915037660255136713627233956554116480",
    ("M", 21, 16): "-0.0990310666212991177281328116294234061275",
    ("M", 21, 17): "-0.0495316505530113215988979410810678190789",
    ("M", 21, 19): "-0.0575425961745506509846081950401122043977",
    ("M", 21, 20): "-0.0982465732345073585746579015543701721321",
    ("M", 39, 1): "-0.0544150300747313383827161426970038945340",
    ("M", 39, 2): "0.4598676271292146454635405190244096879502",
    ("M", 39, 4): "-0.0459945989750685459192257387089186431466",
    ("M", 39, 5): "0.1419809783012313146832767050494466413940",
    ("M", 39, 7): "0.0795104580446772217182944213478570283508",
    ("M", 39, 8): "-0.0482711271695363892787808993829901318045",
    ("M", 39, 10): "-0.0625407087664201913542100549743954739736",
    ("M", 39, 11): "0.0351003379054991567928449805604752789995",
    ("M", 39, 14): "-0.0462707514061093124433385415480332066056",
    ("M", 39, 16): "-0.0671621258405927639177835818713861803563",
    ("M", 39, 17): "-0.0045382608754434839604448757618956856127",
    ("M", 39, 19): "-0.0078618584432586956665912002217299778289",
    ("M", 39, 20): "-0.0459231434298270830511730272690723063199",
    ("M", 39, 22): "-0.0510428073342697409080043003007927978280",
    ("M", 39, 23): "-0.0124631690534506350301370113904825945643",
    ("M", 39, 25): "-0.0581243810207459383640563019555017509681",
    ("M", 39, 28): "-0.0517462190695606135794914158573956691966",
    ("M", 39, 29): "-0.0270586216004553688028443336640559574303",
    ("M", 39, 31): "-0.0298803394337857678868833935975175701503",
    ("M", 39, 32): "-0.0473004404088889108385362179544297078717",
    ("M", 39, 34): "-0.0463158869206440559788110651402015355032",
    ("M", 39, 35): "-0.0548045111222561868022129723349733959006",
    ("M", 39, 37): "-0.0382400585981196219570938701692763534202",
    ("M", 39, 38): "-0.0652645592462251671904512528298502010370",
    ("M", 84, 1): "-0.0734639142617973328342764883795225181917",
    ("M", 84, 5): "0.1483235495915302335618054737355898008922",
    ("M", 84, 11): "0.0290724024926249302145251081589204300848",
    ("M", 84, 13): "0.0224290728747548696540000597026220130239",
    ("M", 84, 17): "0.0003006811962294747858026144190460423904",
    ("M", 84, 19): "-0.0057630788020940875837442254844273481232",
    ("M", 84, 23): "-0.0138497965201530520881105236922199356889",
    ("M", 84, 25): "-0.0607016756429021608396776477008214514160",
    ("M", 84, 29): "-0.0222266883543388763218294385273009788572",
    ("M", 84, 31): "-0.0325213918938471846809848382364695447795",
    ("M", 84, 37): "-0.0442703289531425263413021626262327744388",
    ("M", 84, 41): "-0.0475336593998265389573863164643172518681",
    ("M", 84, 43): "-0.0349844470681622477062171025133156240120",
    ("M", 84, 47): "-0.0445066163462559127992767610577927883843",
    ("M", 84, 53): "-0.0464787677042489430315110529799271933763",
    ("M", 84, 55): "-0.0621205766407803833253627830982774246719",
    ("M", 84, 59): "-0.0498323317492407963847005555001138614693",
    ("M", 84, 61): "-0.0517795173724565634008639695556848562744",
    ("M", 84, 65): "-0.0611014074876142825858879099751875289632",
    ("M", 84, 67): "-0.0515716262256392254744286000973214317642",
    ("M", 84, 71): "-0.0564000928602728372344159805280953932988",
    ("M", 84, 73): "-0.0502394007123625523428183030876871602845",
    ("M", 84, 79): "-0.0547607376681565913868306490031906316886",
    ("M", 84, 83): "-0.0507129138346808196172715850900529202640",
    ("B", 3, 1): "-0.0179374320543395898017537423354360793084",
    ("B", 3, 2): "-0.2256492452247194384046517270072546894435",
    ("B", 4, 1): "-0.0303152628374217668471785632748622368557",
    ("B", 4, 3): "-0.0922560086565230005866745667406677670593",
    ("B", 5, 1): "-0.0056989812258217866230186764730771910864",
    ("B", 5, 2): "-0.2072541594806942995597739906452261268831",
    ("B", 5, 3): "-0.0770818781394248684981698458665942749449",
    ("B", 5, 4): "-0.0025398818937393664038276481789744757015",
    ("B", 9, 1): "-0.0020696391618847864572238027206860724807",
    ("B", 9, 2): "-0.1986304651091420386235919033135853530442",
    ("B", 9, 4): "-0.0039355992675986157162225504954464900241",
    ("B", 9, 5): "-0.0247398868156813518681399775437689383104",
    ("B", 9, 7): "-0.0119321936248561876283073891193035168035",
    ("B", 9, 8): "-0.0022788932998960479129198461499003980889",
    ("B", 15, 1): "-0.0007572379320997903470262134621931512735",
    ("B", 15, 2): "-0.1953264208891238586234409171756188321671",
    ("B", 15, 4): "-0.0016365552581033232050519597636557571823",
    ("B", 15, 7): "-0.0119277385915704409363330734696072947160",
    ("B", 15, 8): "-0.0013342030920277845401475680955985955697",
    ("B", 15, 11): "-0.0049417432937219962759924630108840398129",
    ("B", 15, 13): "-0.0036159002725660353133424956399798761365",
    ("B", 15, 14): "-0.0009033266356360431987756884153187185191",
    ("B", 21, 1): "-0.0003412956292374148069148220346920460252",
    ("B", 21, 2): "-0.1942344947334699688894003974560112287700",
    ("B", 21, 4): "-0.0002098816767539160024207752141222498501",
    ("B", 21, 5): "-0.0235093228522841911201270554154748282363",
    ("B", 21, 8): "-0.0007915893971472685099562881470728940934",
    ("B", 21, 10): "-0.0006922252022738492137317334872558725556",
    ("B", 21, 11): "-0.0046535617744727410631965497667779194062",
    ("B", 21, 13): "-0.0032481317635525831931756409952984059420",
    ("B", 21, 16): "-0.0004945238101126788996808520807420758727",
    ("B", 21, 17): "-0.0020363536140986162458739759280171063102",
    ("B", 21, 19): "-0.0016578370022937005358116763179908292912",
    ("B", 21, 20): "-0.0004239228532466525760974602939007126272",
    ("B", 39, 1): "-0.0001121391210993880688819721271925997627",
    ("B", 39, 2): "-0.1934769655975371993490813769210619094240",
    ("B", 39, 4): "-0.0002995815105830464353463369791216808136",
    ("B", 39, 5): "-0.0232346770448918237834268807192861283189",
    ("B", 39, 7): "-0.0113299371144385520676547127480047428604",
    ("B", 39, 8): "-0.0002454341727558259212509705166966869744",
    ("B", 39, 10): "-0.0000459138224155805565513538531922246471",
    ("B", 39, 11): "-0.0044929480570028872659134897718135000937",
    ("B", 39, 14): "-0.0002193611514478558639221844642199225052",
    ("B", 39, 16): "-0.0000223235704255911196145171142624220894",
    ("B", 39, 17): "-0.0018338873065642236614942324023402025533",
    ("B", 39, 19): "-0.0015031092616855056695375513171955283284",
    ("B", 39, 20): "-0.0001858990560853595070479345313080934723",
    ("B", 39, 22): "-0.0001705919794542183214877183738499262132",
    ("B", 39, 23): "-0.0010537105458215435324380971901947683990",
    ("B", 39, 25): "-0.0000730986515003499343341780315856293861",
    ("B", 39, 28): "-0.0001342213885419137800239278870137043470",
    ("B", 39, 29): "-0.0006675737489094563083519829970440655189",
    ("B", 39, 31): "-0.0005852676315151717436339529174197209276",
    ("B", 39, 32): "-0.0001433829254050606314390524017643892945",
    ("B", 39, 34): "-0.0001404190990760282183009755731128149793",
    ("B", 39, 35): "-0.0000707291474709482991989950130887911099",
    ("B", 39, 37): "-0.0004011981531447411395316606101222440231",
    ("B", 39, 38): "-0.0000246764708272542810865300784362317789",
    ("B", 84, 1): "-0.0000119163858637686167954725330316682793",
    ("B", 84, 5): "-0.0232403602184713008048627754438543014690",
    ("B", 84, 11): "-0.0044365093956013183002165422530420512818",
    ("B", 84, 13): "-0.0032012002462998617358456975415447057261",
    ("B", 84, 17): "-0.0018681454567877949532487758242611745268",
    ("B", 84, 19): "-0.0014999868517105941255280000567662988513",
    ("B", 84, 23): "-0.0010419325887589517242899271111822879451",
    ("B", 84, 25): "-0.0000667248398877511948366874331992186367",
    ("B", 84, 29): "-0.0006749316281200272421803236576904643492",
    ("B", 84, 31): "-0.0005598064648252633420494915697566166895",
    ("B", 84, 37): "-0.0003842227265021586749603313599748870266",
    ("B", 84, 41): "-0.0003150584838202808316242249021937896620",
    ("B", 84, 43): "-0.0003293792433736461901193495016603777458",
    ("B", 84, 47): "-0.0002689626338128903152642799716205267673",
    ("B", 84, 53): "-0.0002170523788714227629800075137358681243",
    ("B", 84, 55): "-0.0000469315172527214573299434537537002158",
    ("B", 84, 59): "-0.0001682081573108212926252001037559317834",
    ("B", 84, 61): "-0.0001578501505831064102836762612245304399",
    ("B", 84, 65): "-0.0000453815847657077478783488866523727492",
    ("B", 84, 67): "-0.0001431568368661648075840877809230312134",
    ("B", 84, 71): "-0.0001166577690272412677759644893824297442",
    ("B", 84, 73): "-0.0001324187374485858716822419174992558660",
    ("B", 84, 79): "-0.0001103010836105202247205207207671888461",
    ("B", 84, 83): "-0.0001088643694263717444732353917069229651",
}

# printed certified digit counts
PRINTED_DIGITS = {
    ("M", 3, 1): 104,
    ("M", 3, 2): 104,
    ("M", 4, 1): 104,
    ("M", 4, 3): 104,
    ("M", 5, 1): 104,
    ("M", 5, 2): 104,
    ("M", 5, 3): 104,
    ("M", 5, 4): 104,
    ("M", 9, 1): 104,
    ("M", 9, 2): 104,
    ("M", 9, 4): 104,
    ("M", 9, 5): 104,
    ("M", 9, 7): 104,
    ("M", 9, 8): 104,
    ("M", 15, 1): 104,
    ("M", 15, 2): 104,
    ("M", 15, 4): 104,
    ("M", 15, 7): 104,
    ("M", 15, 8): 104,
    ("M", 15, 11): 104,
    ("M", 15, 13): 104,
    ("M", 15, 14): 104,
    ("M", 21, 1): 104,
    ("M", 21, 2): 104,
    ("M", 21, 4): 104,
    ("M", 21, 5): 104,
    ("M", 21, 8): 104,
    ("M", 21, 10): 104,
    ("M", 21, 11): 104,
    ("M", 21, 13): 104,
    ("M", 21, 16): 104,
    ("M", 21, 17): 104,
    ("M", 21, 19): 104,
    ("M", 21, 20): 104,
    ("M", 39, 1): 104,
    ("M", 39, 2): 104,
    ("M", 39, 4): 104,
    ("M", 39, 5): 104,
    ("M", 39, 7): 104,
    ("M", 39, 8): 104,
    ("M", 39, 10): 104,
    ("M", 39, 11): 104,
    ("M", 39, 14): 104,
    ("M", 39, 16): 104,
    ("M", 39, 17): 104,
    ("M", 39, 19): 104,
    ("M", 39, 20): 104,
    ("M", 39, 22): 104,
    ("M", 39, 23): 104,
    ("M", 39, 25): 104,
    ("M", 39, 28): 104,
    ("M", 39, 29): 104,
    ("M", 39, 31): 104,
    ("M", 39, 32): 104,
    ("M", 39, 34): 104,
    ("M", 39, 35): 104,
    ("M", 39, 37): 104,
    ("M", 39, 38): 104,
    ("M", 84, 1): 104,
    ("M", 84, 5): 104,
    ("M", 84, 11): 104,
    ("M", 84, 13): 104,
    ("M", 84, 17): 104,
    ("M", 84, 19): 104,
    ("M", 84, 23): 104,
    ("M", 84, 25): 104,
    ("M", 84, 29): 104,
    ("M", 84, 31): 104,
    ("M", 84, 37): 104,
    ("M", 84, 41): 104,
    ("M", 84, 43): 104,
    ("M", 84, 47): 104,
    ("M", 84, 53): 104,
    ("M", 84, 55): 104,
    ("M", 84, 59): 104,
    ("M", 84, 61): 104,
    ("M", 84, 65): 104,
    ("M", 84, 67): 104,
    ("M", 84, 71): 104,
    ("M", 84, 73): 104,
    ("M", 84, 79): 104,
    ("M", 84, 83): 104,
    ("B", 3, 1): 103,
    ("B", 3, 2): 103,
    ("B", 4, 1): 103,
    ("B", 4, 3): 103,
    ("B", 5, 1): 103,
    ("B", 5, 2): 103,
    ("B", 5, 3): 103,
    ("B", 5, 4): 103,
    ("B", 9, 1): 103,
    ("B", 9, 2): 103,
    ("B", 9, 4): 103,
    ("B", 9, 5): 102,
    ("B", 9, 7): 102,
    ("B", 9, 8): 103,
    ("B", 15, 1): 103,
    ("B", 15, 2): 103,
    ("B", 15, 4): 103,
    ("B", 15, 7): 102,
    ("B", 15, 8): 103,
    ("B", 15, 11): 102,
    ("B", 15, 13): 102,
    ("B", 15, 14): 103,
    ("B", 21, 1): 103,
    ("B", 21, 2): 103,
    ("B", 21, 4): 103,
    ("B", 21, 5): 102,
    ("B", 21, 8): 102,
    ("B", 21, 10): 102,
    ("B", 21, 11): 102,
    ("B", 21, 13): 102,
    ("B", 21, 16): 102,
    ("B", 21, 17): 102,
    ("B", 21, 19): 102,
    ("B", 21, 20): 102,
    ("B", 39, 1): 102,
    ("B", 39, 2): 102,
    ("B", 39, 4): 102,
    ("B", 39, 5): 102,
    ("B", 39, 7): 102,
    ("B", 39, 8): 102,
    ("B", 39, 10): 102,
    ("B", 39, 11): 102,
    ("B", 39, 14): 102,
    ("B", 39, 16): 102,
    ("B", 39, 17): 102,
    ("B", 39, 19): 102,
    ("B", 39, 20): 102,
    ("B", 39, 22): 102,
    ("B", 39, 23): 102,
    ("B", 39, 25): 102,
    ("B", 39, 28): 102,
    ("B", 39, 29): 102,
    ("B", 39, 31): 102,
    ("B", 39, 32): 102,
    ("B", 39, 34): 102,
    ("B", 39, 35): 102,
    ("B", 39, 37): 102,
    ("B", 39, 38): 102,
    ("B", 84, 1): 102,
    ("B", 84, 5): 102,
    ("B", 84, 11): 102,
    ("B", 84, 13): 102,
    ("B", 84, 17): 102,
    ("B", 84, 19): 102,
    ("B", 84, 23): 102,
    ("B", 84, 25): 102,
    ("B", 84, 29): 102,
    ("B", 84, 31): 102,
    ("B", 84, 37): 102,
    ("B", 84, 41): 102,
    ("B", 84, 43): 102,
    ("B", 84, 47): 102,
    ("B", 84, 53): 102,
    ("B", 84, 55): 102,
    ("B", 84, 59): 102,
    ("B", 84, 61): 102,
    ("B", 84, 65): 102,
    ("B", 84, 67): 102,
    ("B", 84, 71): 102,
    ("B", 84, 73): 102,
    ("B", 84, 79): 102,
    ("B", 84, 83): 102,
}
