public class Pair {
    CharSequence first;
    CharSequence second;

    void refresh(String a, String b) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.N) {
            first = Html.fromHtml(a, 0);
        } else {
            first = Html.fromHtml(a);
        }
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.N) {
            second = Html.fromHtml(b, 0);
        } else {
            second = Html.fromHtml(b);
        }
    }
}
